"""
Expand tool: the product of two words as a word combination.

The word grammar follows the product: p/d/y words (or z(...)) for the
q-products, x0/x1 strings for the shuffle, y(...) for the quasi-shuffle.
"""
from qzeta import LOGGER
from qzeta.algebra.products import ProductKind, cache_info, product
from qzeta.algebra.words import YTILDE, parse_word
from qzeta.commons.core import BaseTool
from qzeta.commons.reports.report_factory import Report_Factory


def read_word(text, alphabet):
    """ z(...) is accepted for every q-product, otherwise the alphabet of the product """
    if alphabet != YTILDE and text.strip().startswith("z"):
        return parse_word(text, YTILDE)
    return parse_word(text, alphabet)


class Expand(BaseTool):
    """Expand u * v for one product kind.
    """

    def __init__(self, words, product="qshuffle", format="text"):
        """Init function of Expand class.

        Parameters
        ----------
        words : list of str
            The two factors, in the grammar of the product.
        product : str
            Product name or alias, by default qshuffle.
        format : str
            text or json, by default text.
        """
        self.kind = ProductKind.from_name(product)
        self.u, self.v = (read_word(text, self.kind.alphabet) for text in words)
        self.output_type = format

    def __call__(self):
        lincomb = product(self.u, self.v, self.kind)
        cache_info()
        LOGGER.debug(f"{self.kind.value} of {self.u} and {self.v}: {len(lincomb)} words")
        return Report_Factory(lincomb, self.output_type).create_report(), self.exit_status(True)
