import importlib.resources
from functools import lru_cache

ASSETS = "tritangent_classes.assets"


@lru_cache(maxsize=64)
def load_resource(fname: str, module: str = ASSETS) -> str:
    return importlib.resources.files(module).joinpath(fname).read_text(encoding="utf-8")
