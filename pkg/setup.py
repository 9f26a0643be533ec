"""Build the optional compiled kernels; the package works without them."""

from setuptools import setup

try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:  # no Cython or numpy at build time: pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("susypiv._kernels", ["src/susypiv/_kernels.pyx"],
                   include_dirs=[np.get_include()],
                   define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
