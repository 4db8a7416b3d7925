# Copyright (c) The cera authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from pathlib import Path

from setuptools import find_packages, setup

setup(
    name="cera",
    author="The cera authors",
    author_email="",
    description="Causal edge Rees algebra invariants of temporal causal graphs",
    long_description=Path("README.md").read_text(encoding="utf-8"),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests*"]),
    include_package_data=True,
    install_requires=[
        "networkx>=2.6",
        "numpy>=1.21",
        "pyee==8.1.0",
    ],
    classifiers=[
        "Topic :: Scientific/Engineering :: Mathematics",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.8",
    use_scm_version={
        "version_scheme": "post-release",
        "write_to": "cera/_repo_version.py",
        "write_to_template": 'version = "{version}"\n',
        "fallback_version": "0.1.0",
    },
    setup_requires=["setuptools-scm==6.3.2", "wheel==0.37.0"],
    entry_points={
        "console_scripts": [
            "cera=cera.__main__:main",
        ],
    },
)
