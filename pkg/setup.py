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


import os

from setuptools import setup, find_packages


setup(
    name='flamekit',
    description='A command-line toolkit for vertex-flames and connectivity '
                'certificates in rooted digraphs',
    long_description=open('README.md', 'r').read(),
    long_description_content_type='text/markdown',
    version=open(os.path.join('flamekit', 'dat', 'VERSION'), 'r').read().strip(),
    python_requires='>=3.6',
    install_requires=[
        'jinja2',
        'networkx>=2.4',
        'numpy>=1.17',
        'pyyaml',
        'termcolor',
    ],
    tests_require=[
        'hypothesis',
        'mock',
    ],
    test_suite='tests',
    packages=find_packages(exclude=['tests', 'tests.*']),
    include_package_data=True,
    package_data={
        'flamekit': [
            'templates/*',
            'dat/*',
        ],
    },
    entry_points={
        'console_scripts': [
            'flamekit = flamekit.manage:main',
        ]
    },
    classifiers=[
        'Intended Audience :: Science/Research',
        'Environment :: Console',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
