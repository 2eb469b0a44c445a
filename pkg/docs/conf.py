# mixedstate documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'mixedstate'
copyright = u'2026, mixedstate developers'
author = u'mixedstate developers'

version = '0.1'
release = '0.1a0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'alabaster'
htmlhelp_basename = 'mixedstatedoc'

man_pages = [
    (master_doc, 'mixedstate', u'mixedstate Documentation', [author], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}
