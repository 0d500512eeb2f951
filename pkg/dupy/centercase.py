from enum import IntEnum, unique


@unique
class CenterCase(IntEnum):
    """ The nine parameter regimes of the center classification """
    EQUAL_ROOTS = 1
    UNIPOTENT = 2
    R_ROOT_OF_UNITY = 3
    S_ROOT_OF_UNITY = 4
    DEPENDENT = 5
    BOTH_ROOTS_OF_UNITY = 6
    R_TRIVIAL = 7
    S_TRIVIAL = 8
    POLYNOMIAL = 9

    def __str__(self):
        return {1: 'r = s root of unity',
                2: 'r = s = 1, phi nonzero',
                3: 'r root of unity, s not',
                4: 's root of unity, r not',
                5: 'r, s multiplicatively dependent',
                6: 'r, s distinct roots of unity',
                7: 'r = 1, s root of unity, phi nonzero',
                8: 's = 1, r root of unity, phi nonzero',
                9: 'center is the base ring'}[self.value]

    @classmethod
    def str_to_case(cls, case):
        return {'equal': CenterCase.EQUAL_ROOTS,
                'unipotent': CenterCase.UNIPOTENT,
                'r_root': CenterCase.R_ROOT_OF_UNITY,
                's_root': CenterCase.S_ROOT_OF_UNITY,
                'dependent': CenterCase.DEPENDENT,
                'both_roots': CenterCase.BOTH_ROOTS_OF_UNITY,
                'r_trivial': CenterCase.R_TRIVIAL,
                's_trivial': CenterCase.S_TRIVIAL,
                'polynomial': CenterCase.POLYNOMIAL}[case.lower()]
