#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# overrideparser.py
# Description: A parser of the overrides given in the command line
# -----------------------------------------------------------------------------
#
# Started on  <Mon Sep 21 10:37:12 2026 >
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""A parser of the overrides given in the command line with --set. Every
override is an assignment 'key=value' where the key is either a bare name
(R_over_P) or qualified with its section (economics.R_over_P), and the value is
a number, a boolean, a string (quoted or not) or a bracketed list of values,
possibly nested, e.g.:

    instructions.items=[[0.5, 15, 75], [0.2, 75, 240]]

"""

# imports
# -----------------------------------------------------------------------------
import ply.lex as lex
import ply.yacc as yacc

from . import utils

# globals
# -----------------------------------------------------------------------------
LOGGER = utils.LOGGER

# -- errors
ERROR_INVALID_CHAR = "Illegal character '{0}' at position {1} of the override '{2}'"
ERROR_SYNTAX_ERROR = "Syntax error at position {0} near '{1}' of the override '{2}': unexpected token {3} found"
ERROR_UNEXPECTED_END = "Unexpected end of the override '{0}': it must be given as key=value"


# classes
# -----------------------------------------------------------------------------

# -----------------------------------------------------------------------------
# OverrideParser
#
# Class used to define the lex and grammar rules necessary for interpreting
# overrides of the configuration
# -----------------------------------------------------------------------------
class OverrideParser:
    """
    Class used to define the lex and grammar rules necessary for interpreting
    overrides of the configuration
    """

    # reserved words
    reserved_words = {
        'true'  : 'TRUE',
        'True'  : 'TRUE',
        'false' : 'FALSE',
        'False' : 'FALSE'
        }

    # List of token names. This is always required
    tokens = (
        'NUMBER',
        'STRING',
        'ID',
        'EQUALS',
        'DOT',
        'COMMA',
        'LBRACKET',
        'RBRACKET',
        'TRUE',
        'FALSE'
        )

    def __init__(self):
        """
        Constructor
        """

        # the text being parsed, used only to report errors
        self._text = ""

        # Build the lexer and parser
        self._lexer = lex.lex(module=self)
        self._parser = yacc.yacc(module=self, write_tables=False, debug=False)

    # lex rules
    # -------------------------------------------------------------------------

    # Regular expression rules for simple tokens
    t_EQUALS = r'='
    t_DOT = r'\.'
    t_COMMA = r','
    t_LBRACKET = r'\['
    t_RBRACKET = r'\]'

    # Definition of both integer and real numbers
    def t_NUMBER(self, t):
        r'[\+-]?(\d+\.\d*|\.\d+|\d+)([eE][\+-]?\d+)?'

        # numbers with a decimal point or an exponent are floating-point numbers
        if any(char in t.value for char in '.eE'):
            t.value = float(t.value)
        else:
            t.value = int(t.value)

        return t

    # A regular expression for recognizing both single and doubled quoted
    # strings
    def t_STRING(self, t):
        r"""\"([^\\\n]|(\\.))*?\"|'([^\\\n]|(\\.))*?'"""

        t.value = t.value[1:-1]
        return t

    # The following rule distinguishes automatically between reserved words and
    # identifiers
    def t_ID(self, t):
        r'[a-zA-Z_][a-zA-Z_\d]*'

        t.type = self.reserved_words.get(t.value, 'ID')
        return t

    # A string containing ignored characters (spaces and tabs)
    t_ignore = ' \t'

    # Error handling rule
    def t_error(self, t):

        LOGGER.error(ERROR_INVALID_CHAR.format(t.value[0], t.lexpos, self._text))
        raise ValueError(ERROR_INVALID_CHAR.format(t.value[0], t.lexpos, self._text))

    # grammar rules
    # -------------------------------------------------------------------------

    # an override assigns a value to a key. It is returned as a tuple
    def p_assignment(self, p):
        '''assignment : key EQUALS value'''

        p[0] = (p[1], p[3])

    # keys are either bare or qualified with the name of the section
    def p_key(self, p):
        '''key : ID
               | ID DOT ID'''

        p[0] = p[1] if len(p) == 2 else p[1] + '.' + p[3]

    def p_value(self, p):
        '''value : NUMBER
                 | STRING
                 | ID
                 | boolean
                 | list'''

        p[0] = p[1]

    def p_boolean(self, p):
        '''boolean : TRUE
                   | FALSE'''

        p[0] = p[1] in ('true', 'True')

    # lists are bracketed and might be empty
    def p_list(self, p):
        '''list : LBRACKET RBRACKET
                | LBRACKET values RBRACKET'''

        p[0] = [] if len(p) == 3 else p[2]

    def p_values(self, p):
        '''values : value
                  | value COMMA values'''

        if len(p) == 2:
            p[0] = [p[1]]
        else:
            p[0] = [p[1]] + p[3]

    # error handling
    # -------------------------------------------------------------------------
    # Error rule for syntax errors
    def p_error(self, p):

        if p is None:
            LOGGER.error(ERROR_UNEXPECTED_END.format(self._text))
            raise ValueError(ERROR_UNEXPECTED_END.format(self._text))

        LOGGER.error(ERROR_SYNTAX_ERROR.format(p.lexpos, p.value, self._text, p.type))
        raise ValueError(ERROR_SYNTAX_ERROR.format(p.lexpos, p.value, self._text, p.type))


# -----------------------------------------------------------------------------
# VerbatimOverrideParser
#
# Class used to process a verbatim string
# -----------------------------------------------------------------------------
class VerbatimOverrideParser(OverrideParser):
    """
    Class used to process a verbatim string
    """

    def run(self, data):
        """
        Just parse the given string and return the tuple (key, value)
        """

        self._text = data
        return self._parser.parse(data, lexer=self._lexer)


# Local Variables:
# mode:python
# fill-column:80
# End:
