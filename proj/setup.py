"""CMake-driven extension build: the python module is produced by the same
CMake tree as the library and CLI."""

import subprocess
import sys
from pathlib import Path

from setuptools import setup, Extension
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_temp = Path(self.build_temp).resolve()
        build_temp.mkdir(parents=True, exist_ok=True)
        source = Path(__file__).parent.resolve()
        subprocess.run(
            [
                "cmake",
                "-S", str(source),
                "-B", str(build_temp),
                "-DGCOALG_PYTHON_ONLY=ON",
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_temp), "--target", "_gcoalg", "--parallel"],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("gcoalg._gcoalg")],
    cmdclass={"build_ext": CMakeBuild},
)
