import threading
from typing import Any, Dict


class Singleton(type):
    """
    Create a class which only init once
    Instruction:
        class foo(metaclass=Singleton)
        foo.drop_instance()   # closes the instance if it has close(); next foo(...) builds a fresh one
    """
    _instance: Dict[type, Any] = {}
    _lock = threading.Lock()

    def __call__(cls, *args, **kwds):
        if cls not in cls._instance:
            with cls._lock:
                if cls not in cls._instance:
                    instance = super().__call__(*args, **kwds)
                    cls._instance[cls] = instance
        return cls._instance[cls]

    def drop_instance(cls) -> None:
        with cls._lock:
            instance = cls._instance.pop(cls, None)
        close = getattr(instance, "close", None)
        if callable(close):
            close()
