from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "hmom._core",
    sources=[
        "bindings/pymodule.cpp",
        "src/hermite.cpp",
        "src/moments.cpp",
        "src/akl.cpp",
        "src/lattice.cpp",
        "src/series_analysis.cpp",
        "src/spectra.cpp",
        "src/wigner.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
