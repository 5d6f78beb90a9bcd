import os

from setuptools import Extension, setup

# The compiled kernels are an optional speedup; the package falls back to the
# numpy implementation when the extension is missing (see nlbvp._kernels).
ext_modules = []
if os.environ.get("NLBVP_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "nlbvp._kernels._speedups",
                    ["src/nlbvp/_kernels/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
