from . import export, read_instance, write_instance
