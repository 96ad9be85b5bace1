from .shape_engine import shape
from .pipedream_engine import pipedream
from .chute_engine import chute
from .filling_engine import filling
from .schubert_engine import schubert
from .eg_engine import eg
from .bijection_engine import bijection
