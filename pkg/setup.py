from setuptools import setup, find_packages
from codecs import open
from os import path

__license__ = "BSD"

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

with open(path.join(here, 'requirements.txt'), encoding='utf-8') as f:
    requirements = f.read().splitlines()

with open(path.join(here, 'requirements_tests.txt'), encoding='utf-8') as f:
    test_requirements = f.read().splitlines()


setup(name='pancake_clique',
      version='0.1.0',
      license='BSD-Clause-2',
      description='Maximum clique in intersection graphs of unit disks and 2-pancakes',
      classifiers=[
          # How mature is this project? Common values are
          #   3 - Alpha
          #   4 - Beta
          #   5 - Production/Stable
          'Development Status :: 3 - Alpha',

          'Intended Audience :: Science/Research',
          'Topic :: Scientific/Engineering :: Mathematics',

          'License :: OSI Approved :: BSD License',

          "Operating System :: OS Independent",

          'Programming Language :: Python',
          'Programming Language :: Python :: 3'
      ],
      keywords='maximum-clique intersection-graphs computational-geometry',
      install_requires=requirements,
      extras_require={'tests': test_requirements},
      python_requires='>=3.9',
      long_description=long_description,
      long_description_content_type='text/markdown',
      entry_points={
          'console_scripts': ['pancake-clique=pancake_clique.cli.main:main'],
      },
      packages=find_packages(exclude=["*.test", "*.test.*", "test.*", "test", "examples", "examples.*"]),
      )
