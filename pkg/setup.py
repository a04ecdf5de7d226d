#!/usr/bin/env python3
from setuptools import find_packages, setup

setup(
    name='emato_ktrn',
    version='0.1.0',
    packages=find_packages(include=['emato_ktrn', 'emato_ktrn.*']),
    install_requires=['numpy', 'dacite', 'tqdm', 'psutil', 'networkx', 'matplotlib', 'pytest-mock'],
    entry_points={'console_scripts': ['emato-ktrn=emato_ktrn.harness.cli:main']},
)
