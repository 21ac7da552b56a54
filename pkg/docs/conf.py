# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import sys
from os.path import abspath, dirname

sys.path.insert(0, abspath(dirname(dirname(__file__))))


# -- Project information -----------------------------------------------------

project = 'qzeta'
copyright = '2026, qzeta developers'
author = 'qzeta developers'

# The full version, including alpha/beta/rc tags
release = '0.1.0'


# -- General configuration ---------------------------------------------------

extensions = [
   'sphinx.ext.napoleon',
   'sphinx.ext.autosummary',
   'sphinx.ext.autodoc'
]

autosummary_generate = True
autodoc_mock_imports = ["numpy", "pandas", "tqdm", "jsonschema", "mpmath"]
templates_path = ['_templates']

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = []
