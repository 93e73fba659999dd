#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# setup.py
# Description: reserveopt setup file
# -----------------------------------------------------------------------------
#
# Login   <reserveopt@localhost>
#

"""
reserveopt setup file
"""

# import sys
import setuptools

# import the version file
import reserveopt.version

with open("README.md", "r") as fh:
    LONG_DESCRIPTION = fh.read()

setuptools.setup(
    name="reserveopt",
    version=reserveopt.version.__version__,
    author=reserveopt.version.__author__,
    author_email=reserveopt.version.__email__,
    description=reserveopt.version.__description__,
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    keywords="demand response reserve building cooling optimal control augmented lagrangian",
    packages=setuptools.find_packages(exclude=["tests"]),
    package_data={"reserveopt": ["data/*.json"]},
    install_requires=[
        "numpy",
        "scipy",
        "ply",
        "pyexcel",
        "pyexcel-io"
    ],
    extras_require={
        "test": ["pytest"]
    },
    entry_points={
        "console_scripts": [
            "reserve-opt = reserveopt.cli:main"
        ]
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
)

# Local Variables:
# mode:python
# fill-column:80
# End:
