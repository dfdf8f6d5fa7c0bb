from setuptools import setup, find_packages

setup(
    name="sbihari",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=["numpy>=1.24", "scipy>=1.10", "pandas>=2.2.0", "pydantic>=2.0.0"],
    python_requires=">=3.9",
    description="Stochastic Bihari-LaSalle bounds, Euler approximates of path-dependent "
    "Levy-driven SDEs and Monte Carlo checks",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    entry_points={"console_scripts": ["sbihari=sbihari.cli:main"]},
)
