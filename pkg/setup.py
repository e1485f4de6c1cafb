"""Build hook for the optional compiled kernel extension.

The package is pure Python plus one Cython module; without Cython or a C
compiler the install still succeeds and the NumPy fallback kernels are
used (see surfloss._kernels).  Build in place for a source checkout with:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension(
            "surfloss._kernels._core",
            ["src/surfloss/_kernels/_core.pyx"],
            include_dirs=[numpy.get_include()],
            extra_compile_args=["-O3"],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        )],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
