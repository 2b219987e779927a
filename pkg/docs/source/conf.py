# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------

import os
import sys
from importlib.metadata import version as _version, PackageNotFoundError

try:
    _ver = _version("SuperHC")
except PackageNotFoundError:
    _ver = "unknown"

project = 'SuperHC'
copyright = '2026, Zachary Caterer'
author = 'Zachary Caterer'
release = _ver

# -- General configuration ---------------------------------------------------

extensions = [
    "myst_parser",
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
    "sphinx_click",
    "sphinx_copybutton"
]

myst_enable_extensions = [
    "dollarmath",   # enables $...$ and $$...$$ math syntax in .md files
    "amsmath",      # enables \begin{equation} ... \end{equation} environments
]

source_suffix = {
    '.rst': 'restructuredtext',
    '.md': 'markdown'
}

# -- Paths ---------------------------------------------------------------
sys.path.insert(0, os.path.abspath('../..'))

# -- Autodoc options -----------------------------------------------------
autodoc_default_options = {
    'members': True,
    'undoc-members': True,
    'show-inheritance': True,
}

autodoc_typehints = 'description'

templates_path = ['_templates']
exclude_patterns = []

# -- Options for HTML output -------------------------------------------------

html_theme = 'furo'
html_static_path = ['_static']

html_theme_options = {
    "light_css_variables": {
        "color-brand-primary": "#0A9396",
        "color-brand-content": "#0A9396",
        "color-link": "#0A9396",
    },
    "dark_css_variables": {
        "color-brand-primary": "#94D2BD",
        "color-brand-content": "#94D2BD",
        "color-link": "#94D2BD",
    },
}
