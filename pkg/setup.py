# -*- coding: utf-8 -*-

# Learn more: https://github.com/kennethreitz/setup.py

from setuptools import setup, find_packages


with open('README.md', encoding = 'utf-8') as f:
    readme = f.read()

setup(
    name='pyresonant',
    version='1.0.0',
    description='Norm growth of words in diag(λ, 0) and rotations, the resonant set of angles, and comparisons with SL(2, R)',
    long_description=readme,
    long_description_content_type='text/markdown',
    python_requires='>=3.9',
    packages=find_packages(exclude=('tests', 'docs')),
    install_requires=[
        'numpy',
        'mpmath'
    ],
    entry_points={
        'console_scripts': ['pyresonant=pyresonant.cli:main']
    }
)
