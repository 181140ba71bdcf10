"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension: divsim._kernels falls
back to the numpy implementation when divsim._kernels._core is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "divsim._kernels._core",
                ["src/divsim/_kernels/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
