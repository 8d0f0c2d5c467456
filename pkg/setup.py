import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("STAIRCASE_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:  # pure-Python install
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "staircase._ckernel",
                    ["src/staircase/_ckernel.pyx"],
                    extra_compile_args=["-O3"],
                    language="c++",
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
