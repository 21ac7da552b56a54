import os
import re

from setuptools import setup, find_packages

HERE = os.path.dirname(os.path.abspath(__file__))


def read(*parts):
    with open(os.path.join(HERE, *parts)) as read_file:
        return read_file.read()


def read_version():
    match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", read('qzeta', '__init__.py'), re.MULTILINE)
    return match.group(1)


def conda_requirements():
    """
    install_requires from the conda environment.yml: the conda dependencies
    and the package name of every pip entry
    """
    requires, section = [], None
    for line in read('environment.yml').splitlines():
        entry = line.strip().lstrip("- ").strip()
        if entry in ("dependencies:", "pip:"):
            section = entry
        elif section and entry and not entry.startswith("python"):
            requires.append(entry if section == "dependencies:" else entry.split("/")[-1].split("@")[0])
    return requires


setup(
    name='qzeta',
    version=read_version(),
    author='qzeta Team',
    description="exact computer algebra for the double q-shuffle structure of q-multiple zeta values",
    long_description_content_type='text/markdown',
    long_description=read('README.md'),
    license='MIT',
    keywords='multiple zeta values, q-analogues, shuffle algebra, computer algebra',
    classifiers=[
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'License :: OSI Approved :: MIT License'
    ],
    packages=find_packages(exclude=["tests"]),
    package_data={'qzeta': ['scripts/json_defaults/*.json']},
    include_package_data=True,
    entry_points={'console_scripts': ['qzeta = qzeta.main:main']},
    install_requires=conda_requirements()
)
