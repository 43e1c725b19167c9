import pathlib
from setuptools import setup, find_packages

HERE = pathlib.Path(__file__).parent

VERSION = '0.1.0'
PACKAGE_NAME = 'ChoreoPy'
AUTHOR = 'ChoreoPy developers'

LICENSE = 'BSD-3-Clause license'
DESCRIPTION = 'Choreographic programming with endpoint projection as an ' \
              'effect handler'
LONG_DESCRIPTION = (HERE / "README.md").read_text()
LONG_DESC_TYPE = "text/markdown"

INSTALL_REQUIRES = [
      'numpy',
      'pandas',
      'xarray',
      'arpeggio',
]

EXTRAS_REQUIRE = {
      'test': ['pytest', 'hypothesis'],
}

setup(name=PACKAGE_NAME,
      version=VERSION,
      description=DESCRIPTION,
      long_description=LONG_DESCRIPTION,
      long_description_content_type=LONG_DESC_TYPE,
      author=AUTHOR,
      license=LICENSE,
      python_requires='>=3.9',
      install_requires=INSTALL_REQUIRES,
      extras_require=EXTRAS_REQUIRE,
      packages=find_packages(),
      package_data={'choreopy.cli': ['corpus/*.chor', 'corpus/*.net',
                                     'corpus/*.hosts'],
                    'choreopy.cli.tests': ['goldens/*.txt']},
      entry_points={
          'console_scripts': ['choreopy=choreopy.cli.main:main'],
      },
      )
