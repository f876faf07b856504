# Copyright (c) 2019, UofL Computer Systems Lab.
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without event the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along
# with this program; if not, write to the Free Software Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.

from setuptools import setup

import pwl


COMMANDS = [
    'assignment-from-plan = pwl.commands.assignment_from_plan:main',
    'bench = pwl.commands.bench:main',
    'ext-synthesize = pwl.commands.ext_synthesize:main',
    'ext-verify = pwl.commands.ext_verify:main',
    'from-cnf = pwl.commands.from_cnf:main',
    'gen = pwl.commands.gen:main',
    'ma-verify = pwl.commands.ma_verify:main',
    'plan-from-assignment = pwl.commands.plan_from_assignment:main',
    'reduce-goals = pwl.commands.reduce_goals:main',
    'shrink = pwl.commands.shrink:main',
    'simulate = pwl.commands.simulate:main',
    'synthesize = pwl.commands.synthesize:main',
    'validate = pwl.commands.validate:main',
    'verify = pwl.commands.verify:main'
]


setup(
    name=pwl.__title__,
    version=pwl.__version__,
    description=pwl.__summary__,
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    project_urls={
        'UofL CSL': 'http://cecs.louisville.edu/csl/'
    },

    author=pwl.__author__,
    license='GNU GPLv2',
    classifiers=[
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v2 (GPLv2)',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
    ],
    packages=['pwl', 'pwl.commands', 'pwl.config'],
    include_package_data=True,

    entry_points={
        'pwl.registered_commands': COMMANDS,
        'console_scripts': [
            'pwl = pwl.__main__:main'
        ]
    },

    python_requires='>=3.8',
    install_requires=[
        'colorama',
        'numpy'
    ],
    extras_require={
        'test': [
            'hypothesis',
            'pytest'
        ]
    }
)
