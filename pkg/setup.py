import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("NGCURVES_NO_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ngcurves._kernels._fast",
                ["src/ngcurves/_kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
