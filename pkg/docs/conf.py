# pylint: skip-file
# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath(".."))
import trilogic.configs.base_config

# -- Project information -----------------------------------------------------

project = "trilogic"
copyright = "2023, Trilogic Team"
author = "Trilogic Team"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinxarg.ext",
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.doctest",
    "sphinx_copybutton",
    "myst_parser",
]

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
suppress_warnings = ["myst.header"]

# -- MYST configs -----------------------------------------------------------

myst_enable_extensions = ["colon_fence", "deflist"]

# -- Options for HTML output -------------------------------------------------

html_theme = "furo"
html_title = "trilogic"

# -- Options for autodoc -----------------------------------------------------

autodoc_typehints = "description"
autodoc_member_order = "bysource"
autodoc_default_options = {"members": True, "undoc-members": False}
