from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

CORE_SOURCES = [
    "src/instance.cpp",
    "src/chain.cpp",
    "src/optimizer.cpp",
    "src/task.cpp",
    "src/star.cpp",
    "src/sim.cpp",
    "src/parallel.cpp",
    "src/config.cpp",
    "src/report.cpp",
    "src/verify.cpp",
]

ext_modules = [
    Pybind11Extension(
        "teamai._teamai",
        CORE_SOURCES + ["src/bindings/module.cpp"],
        include_dirs=["include", "vendor"],
        cxx_std=20,
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
