#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Sphinx configuration of the dimwit documentation.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'dimwit'
copyright = '2026, dimwit developers'
author = 'dimwit developers'
version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
add_module_names = False


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    "collapse_navigation": False
}
html_static_path = ['_static']
htmlhelp_basename = 'dimwitdoc'


# -- Options for other builders -------------------------------------------

latex_documents = [
    (master_doc, 'dimwit.tex', 'dimwit Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'dimwit', 'dimwit Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'dimwit', 'dimwit Documentation', author, 'dimwit', 'Prepare-and-measure dimension witnesses.',
     'Miscellaneous'),
]
