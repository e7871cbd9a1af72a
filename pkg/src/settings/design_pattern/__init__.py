from typing import Any, Callable, Dict, Type


def singleton(cls: Type) -> Callable[..., Any]:
    """Return a factory that builds ``cls`` once and hands back that instance."""
    instances: Dict[Type, Any] = {}

    def get_instance(*args, **kwargs):
        if cls not in instances:
            instances[cls] = cls(*args, **kwargs)
        return instances[cls]

    return get_instance
