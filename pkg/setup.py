from setuptools import setup, find_packages

setup(
    name='mixedstate',
    version='0.1a0',

    description='Position-momentum uncertainty bounds for mixed states',

    license='MIT',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],

    keywords='uncertainty principle mixed state purity oscillator',

    packages=find_packages(exclude=['tests']),

    install_requires=['numpy>=1.17', 'scipy>=1.4'],
    tests_require=['pytest>=2.7.3'],

    entry_points={
        'console_scripts': ['mixedstate = mixedstate.cli:main'],
    },
)
