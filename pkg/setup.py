from setuptools import find_packages, setup

setup(
    name='src',
    packages=find_packages(exclude=["tests"]),
    package_data={"src.data": ["catalog.txt", "configs/*.yaml"]},
    version='1.0.0',
    description="Topological symmetry groups of complete graphs embedded in S^3",
    author='complete-graph-tsg developers',
    license='MIT',
    install_requires=[
        "click>=8.0",
        "numpy",
        "pandas>=1.5",
        "python-dotenv>=0.5.1",
        "pyyaml",
        "sympy>=1.9",
    ],
    entry_points={"console_scripts": ["tsg=src.__main__:cli"]},
)
