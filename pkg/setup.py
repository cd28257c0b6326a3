from setuptools import setup, find_packages


import os


def package_files(directory):
    paths = []
    for (path, directories, filenames) in os.walk(directory):
        for filename in filenames:
            paths.append(os.path.join("..", path, filename))
    return paths


logging_configuration = package_files("ecsteg_logging/")

setup(
    name="ecsteg",
    author="ecsteg developers",
    use_scm_version={"root": ".", "write_to": "ecsteg_shared/version.py"},
    packages=find_packages(exclude=["tests*"]),
    package_data={"ecsteg_logging": logging_configuration},
    include_package_data=True,
    license="Open Source",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    python_requires=">=3.8",
    install_requires=[
        "ansicolors==1.1.8",
        "bitarray",
        "console-progressbar==1.1.2",
        "decorator",
        "numpy",
        "pandas",
        "pluggy",
        "pyyaml",
        "scipy",
    ],
    entry_points={"console_scripts": ["ecsteg=ecsteg_shared.main:main"]},
    zip_safe=False,
    tests_require=["pytest", "hypothesis"],
    test_suite="tests",
    setup_requires=["pytest-runner", "setuptools_scm"],
)
