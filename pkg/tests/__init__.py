# Tests for mocktheta
