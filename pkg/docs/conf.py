# -*- coding: utf-8 -*-
#
# certbounds documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath("."))
sys.path.insert(0, os.path.abspath("../"))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.imgmath',
]

# napoleon
napoleon_use_rtype = False

# heavy imports are not needed to render docstrings
autodoc_mock_imports = ['numpy', 'scipy', 'pandas', 'joblib', 'click']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = 'certbounds'
copyright = '2026, the certbounds developers'
author = 'the certbounds developers'

about = {}
with open(os.path.join('..', 'certbounds', '__version__.py')) as f:
    exec(f.read(), about)

release = about['__version__']
version = ".".join(release.split(".")[:2])

language = 'en'
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_show_sourcelink = False
htmlhelp_basename = 'certboundsdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'certbounds.tex', 'certbounds Documentation',
     author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'certbounds', 'certbounds Documentation', [author], 1)
]
