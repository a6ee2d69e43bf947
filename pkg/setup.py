from setuptools import setup, Extension
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the MPFR inertia kernel if possible; fall back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: C inertia kernel not built ({exc}); "
                  "using the slower gmpy2 fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            print(f"warning: skipping {ext.name}: {exc}")


setup(
    ext_modules=[
        Extension(
            "eqcasson._inertia",
            sources=["src/eqcasson/_inertia.c"],
            libraries=["mpfr", "gmp"],
        )
    ],
    cmdclass={"build_ext": OptionalBuildExt},
)
