"""Public constructors for q-products plus the expression language."""

from .dsl import (
    BinOp,
    Const,
    Eta,
    Expr,
    Monomial,
    Named,
    Neg,
    Omega,
    OmegaList,
    Poch,
    Pow,
    ProductExpr,
    Theta,
    evaluate,
    parse,
    render,
)
from .products import (
    NAMED,
    PochhammerAtom,
    ProductForm,
    ThetaAtom,
    cubic_theta,
    euler_f,
    explicit_product,
    named,
    pochhammer,
    quadratic_residues,
    residue_product,
    theta_f,
)

__all__ = [
    "BinOp", "Const", "Eta", "Expr", "Monomial", "Named", "Neg", "Omega", "OmegaList",
    "Poch", "Pow", "ProductExpr", "Theta", "evaluate", "parse", "render", "NAMED",
    "PochhammerAtom", "ProductForm", "ThetaAtom", "cubic_theta", "euler_f",
    "explicit_product", "named", "pochhammer", "quadratic_residues", "residue_product",
    "theta_f",
]
