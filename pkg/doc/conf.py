#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# reserveopt documentation build configuration file, created by
# sphinx-quickstart on Mon Sep 28 10:02:44 2026.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import reserveopt.version


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.mathjax',
              'sphinx.ext.doctest',
              'sphinx.ext.todo']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = 'reserveopt'
copyright = '2026, reserveopt developers'
author = 'reserveopt developers'

# The short X.Y version and the full version
version = '.'.join(reserveopt.version.__version__.split('.')[:2])
release = reserveopt.version.__version__

language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = True


# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'reserveoptdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'reserveopt.tex', 'reserveopt Documentation',
     'reserveopt developers', 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'reserve-opt', 'reserveopt Documentation',
     [author], 1)
]
