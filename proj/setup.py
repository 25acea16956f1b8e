import glob
import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

EIGEN_CANDIDATES = [
    os.environ.get("EIGEN3_INCLUDE_DIR", ""),
    "/usr/include/eigen3",
    "/usr/local/include/eigen3",
]
eigen_include = next(p for p in EIGEN_CANDIDATES if p and os.path.isdir(p))

ext = Pybind11Extension(
    "spaceformpoly._core",
    sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include", "vendor", eigen_include],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
