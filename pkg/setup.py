import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

with open("VERSION", "r") as f:
    version = f.read().strip()

with open("requirements.txt") as f:
    install_requires = f.read().splitlines()

setuptools.setup(
    name="gwlocalize",
    version=version,
    description="Exact torus localization of genus-0 and genus-1 Gromov-Witten invariants of hypersurfaces.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["examples", "examples.*"]),
    install_requires=install_requires,
    python_requires=">=3.8",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
    ],
)
