from setuptools import setup

VERSION = '0.1.0'

long_description = '''dimwit evaluates prepare-and-measure dimension witnesses, computes their classical and
quantum bounds, simulates a photonic qubit/qutrit/quart experiment and certifies the dimension of a system from
measured statistics.'''

setup(
    name='dimwit',
    version=VERSION,
    description='Dimension witnesses for prepare-and-measure experiments',
    long_description=long_description,
    license='MIT',
    install_requires=[
        'matplotlib',
        'numpy',
        'scipy'
    ],
    packages=[
        'dimwit',
        'dimwit.core',
        'dimwit.bounds',
        'dimwit.photonic',
        'dimwit.stats',
        'dimwit.util'
    ],
    entry_points={
        'console_scripts': ['dimwit=dimwit.cli:main']
    },
    test_suite='tests'
)
