"""Build script: compiles the optional accelerator extension when Cython is present.

The package works without the extension (a NumPy fallback is selected at
import time), so any build failure here is non-fatal for development
installs: delete the extension list or install without Cython to skip it.
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
                "timelinecover._kernels",
                ["src/timelinecover/_kernels.pyx"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
