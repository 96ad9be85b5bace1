from .bijection_model import DiagonalSet, DyckFan, JonssonReport
from .chute_model import (ChutableRect, ChutePoset, IntervalVerdict,
                          LatticeVerdict, OrderComparison, SubgraphVerdict)
from .filling_model import CellChain, Filling, ZeroRowVector
from .pipedream_model import Permutation, PipeDream, ReducedWord
from .schubert_model import Monomial, SchubertPolynomial
from .shape_model import Cell, MoonShape, RowInterval, ShapeClass
from .tableau_model import (BiWord, CounterexampleReport, IndentVector,
                            NeSeReport, Tableau)
