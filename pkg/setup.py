import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("THETADIM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "thetadim._core._speedups",
                    ["src/thetadim/_core/_speedups.pyx"],
                    language="c++",
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install the pure-Python package, the import-time
        # fallback in thetadim._core takes over.
        ext_modules = []

setup(ext_modules=ext_modules)
