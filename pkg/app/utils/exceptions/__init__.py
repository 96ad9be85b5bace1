from .bijection_exceptions import (DiagonalOutOfRangeException,
                                  FanExtractionFailedException,
                                  HeightMultisetMismatchException,
                                  NotStaircaseException)
from .chute_exceptions import (NotAnElbowException, NotChutableException,
                               NotClosedException)
from .common_exception import (DomainException, GuardExceededException,
                               InternalContradiction,
                               OracleDisagreementException, ParseException)
from .eg_exceptions import (HypothesisViolatedException,
                            InsertionUndefinedException,
                            InvalidBiWordException, NotAStackException)
from .filling_exceptions import (ChainBoundExceededException,
                                 NonUniqueFixpointException,
                                 NotAFillingException)
from .pipedream_exceptions import (CrossOutsideShapeException,
                                   CrossOutsideStaircaseException,
                                   InvalidPermutationException,
                                   LetterOutOfRangeException)
from .schubert_exceptions import (DivisionRemainderException,
                                  NonIntegralProductException)
from .shape_exceptions import (InvalidShapeSizeException,
                               NotAPolyominoException, NotConvexException,
                               NotIntersectionFreeException)
