KEYGEN_MODE = "keygen"
ENCRYPT_MODE = "encrypt"
DECRYPT_MODE = "decrypt"
EMBED_MODE = "embed"
EXTRACT_MODE = "extract"
RANDTEST_MODE = "randtest"
SELFTEST_MODE = "selftest"

EXIT_SUCCESS = 0
EXIT_USAGE = 1
EXIT_DATA_ERROR = 2
EXIT_STATISTICAL_FAILURE = 3
