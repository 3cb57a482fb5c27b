from setuptools import find_packages, setup


with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="sparkring",
    version="0.1.0",
    description="Exact engine for spark characters on the circle and smooth Deligne cohomology",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    py_modules=["main"],
    install_requires=[
        "pydantic~=2.10.4",
        "loguru~=0.7.3",
        "toml~=0.10.2",
        "numpy>=1.26",
        "sympy>=1.12",
        "mpmath>=1.3",
    ],
    extras_require={"test": ["pytest>=8.0"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.10",
    entry_points={
        "console_scripts": [
            "sparkring=main:main",
        ],
    },
)
