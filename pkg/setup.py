"""Build script: compiles the optional canonical-labeling extension.

The package works without the extension (a pure-Python kernel is selected
at import time), so the extension is marked optional and any build failure
degrades to a pure install.
"""

import os

from setuptools import Extension, setup

PYX = "src/graphops/canon/_kernel_c.pyx"

extensions = []
if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "graphops.canon._kernel_c",
                    [PYX],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=extensions)
