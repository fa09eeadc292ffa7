"""Build the optional compiled kernels.

Without Cython or a C compiler the package installs pure Python and
``toric_seshadri.kernels`` falls back at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TORIC_SESHADRI_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("toric_seshadri._ckernels", ["src/toric_seshadri/_ckernels.pyx"],
                       extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
