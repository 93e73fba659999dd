#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# reserveopt
# Description: Version number and other admin related info
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""
Version number and other related info
"""

__version__ = "0.3.0"
__revision__ = "master"
__date__ = "sáb 17 oct 2026 18:40:12 CEST"
__author__ = "reserveopt developers"
__email__ = "reserveopt@localhost"
__description__ = "computes cost-optimal night-time cooling schedules for a building providing decremental replacement reserve"


# Local Variables:
# mode:python
# fill-column:80
# End:
