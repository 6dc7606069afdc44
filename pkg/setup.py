try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

setup(name = "tilecount",
    description="Exact domino and brick tiling counts",
    long_description = """
tilecount counts domino tilings of grid regions and 1 x 1 x 2 brick
tilings of small prisms exactly, evaluates the linear recurrences and
closed forms of the classic 3 x 2n, L-shaped and 2 x 2 x n families,
and checks the identities that tie them together.
""",
    license="""GPL v2""",
    version = "0.1",
    packages = ['tilecount'],
    python_requires = '>=3.7',
    install_requires = ['numpy', 'prettytable'],
    entry_points = {
        'console_scripts': ['tilecount = tilecount.cli:main'],
    },
    classifiers = [
      'Programming Language :: Python :: 3',
      'Topic :: Scientific/Engineering :: Mathematics',
    ]
)
