import pytest

import resfin


@pytest.fixture(scope="session")
def catalog():
    # Built once per run; enumeration through 12 plus the handcoded 13..16 range.
    return resfin.build_catalog(16)
