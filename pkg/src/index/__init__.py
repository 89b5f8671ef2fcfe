from src.index.pair import index_of_function, index_of_pair, pair_function
from src.index.report import WindingReport
from src.index.winding import CircleWinding, winding_on_circle
