from setuptools import setup, find_packages

setup(
    name="rl-eval-protocol",
    version="1.0.0",
    packages=find_packages(exclude=["test", "test.*", "examples", "examples.*"]),
    install_requires=[
        "numpy>=1.26",
        "pandas>=2.0.3",
        "scipy>=1.11",
        "jsonschema>=4.18",
    ],
    entry_points={"console_scripts": ["evalkit=src.CommandLine:main"]},
)
