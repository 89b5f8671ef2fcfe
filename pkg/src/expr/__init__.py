from src.expr.evaluator import conj_eval, eval, evaluate_array
from src.expr.parser import parse
from src.expr.printer import to_text
