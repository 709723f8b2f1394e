"""
Copyright (c) 2019 The flamekit authors

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""


import functools
import os

from jinja2 import Environment, FileSystemLoader, StrictUndefined


TEMPLATES_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)),
                             'templates')


def dot_id(value):
    """
    Jinja2 filter. Quotes a vertex id for DOT.
    """
    return '"%s"' % str(value).replace('\\', '\\\\').replace('"', '\\"')


@functools.lru_cache(maxsize=None)
def template_environment():
    """
    The jinja2 environment over the bundled templates. Undefined variables
    are errors.
    """
    env = Environment(loader=FileSystemLoader(TEMPLATES_DIR),
                      autoescape=False, undefined=StrictUndefined,
                      trim_blocks=True, lstrip_blocks=True)
    env.filters['dot_id'] = dot_id

    return env


def render_template(context, template):
    """
    Render the bundled ``template`` with ``context``. Trailing spaces are
    removed and every line, the last included, ends with a newline.
    """
    rendered = template_environment().get_template(template).render(context)

    return ''.join('%s\n' % line.rstrip() for line in rendered.splitlines())
