from . import das, dps, normalize
