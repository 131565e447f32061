#!/usr/bin/env python

from setuptools import setup, find_packages

setup(
    name='pregarside',
    version='0.0.1',
    description='Word problems and parabolic cosets in preGarside monoids of FC type',
    packages=find_packages(exclude=['bin', 'tests']),
    package_data={'pregarside': ['presets/*.txt']},
    install_requires=[
        'numpy',
        'yacs',
        'click',
        'cachetools',
    ],
    entry_points='''
        [console_scripts]
        pgk=pregarside.frontend.cli:main
    ''',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.10",
    ],
)
