from .codecs import *
