"""Arabic social-network sentiment corpus toolkit.

Text cleaning, Franco-Arab transliteration, stopword-list generation and the
presence-feature classifiers, exposed from the C++ core.
"""

from ._core import (
    DataError,
    DTModel,
    NBModel,
    accuracy,
    annotate_by_rating,
    arabic_script_ratio,
    dt_train,
    entropy,
    expand_morphology,
    extract_bigrams,
    extract_unigrams,
    franco_candidates,
    hashtag_segments,
    letter_variants,
    nb_train,
    normalize_for_match,
    remove_stopwords,
    replace_abbreviations,
    tokenize,
    translate_english,
    transliterate,
)

__all__ = [
    "DataError",
    "DTModel",
    "NBModel",
    "accuracy",
    "annotate_by_rating",
    "arabic_script_ratio",
    "dt_train",
    "entropy",
    "expand_morphology",
    "extract_bigrams",
    "extract_unigrams",
    "franco_candidates",
    "hashtag_segments",
    "letter_variants",
    "nb_train",
    "normalize_for_match",
    "remove_stopwords",
    "replace_abbreviations",
    "tokenize",
    "translate_english",
    "transliterate",
]

__version__ = "0.1.0"
