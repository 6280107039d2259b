"""Printed reference values checked by the verification reports.

Large integers are kept as decimal strings exactly as printed."""

from math import prod

# insecure primes for j = 1728 with A = 2^216, B = 3^300, e = 1
FORGE_A = 2**216
FORGE_B = 3**300
FORGE_D = ("16896420333246701930066245846797285820453043046692612"
           "34160275705261296847619733634147787139416180071370253"
           "151875694583397987452872630971686172791991823800180")
FORGE_P_C53 = ("16896420333246701930066245846797285820453043046692612"
               "34160275705261296847619733634147787139416180071370253"
               "151875694583397987452872630971686172791991823797371")
FORGE_P_C355 = ("33792840666493403860132491693594571640906086093385224"
                "68320551410522593695239467268295574278832360142740506"
                "30375138916679597490574526194337234558398364734831")

# Pythagorean triple with B = 5^105
GAUSS_B = 5**105
GAUSS_A_FACTORS = [2, 2, 11, 19, 29, 41, 59, 61, 139, 241, 281, 419, 421, 839, 2381, 17921,
                   21001, 39761, 74761, 448139, 526679, 771961, 238197121]
GAUSS_D_FACTORS = [3, 3, 13, 79, 83, 239, 307, 2801, 3119, 3361, 3529, 28559, 36791, 53759,
                   908321, 3575762705759, 23030958433523039]
GAUSS_COFACTORS = [105, 214, 222]

# B = 17^60
SEVENTEEN_B = 17**60
SEVENTEEN_A_FACTORS = [2] * 5 + [3] * 2 + [5] * 2 + [
    7, 11, 13, 19, 23, 41, 47, 59, 61, 101, 181, 191, 199, 239, 421, 541, 659, 769, 2281,
    16319, 30119, 285599, 391679, 1039081, 1109159]
SEVENTEEN_COFACTOR = 177

# powersmooth triple
POWERSMOOTH_B = (5**8 * 13**4 * 17**4 * 29**4 * 37**4 * 41**4 * 53**4 * 61**4 * 73**4
                 * 89**4 * 97**4)
POWERSMOOTH_A_FACTORS = [2] * 4 + [3, 7, 11, 23, 31, 127, 199, 811, 2903, 155383, 842041,
                                   933199, 1900147, 8333489, 21629743, 30583723, 69375497]
POWERSMOOTH_COFACTOR = 19

# order construction with A = 2^216, B = 3^300, p = A*B*277 - 1
ORDER_A = 2**216
ORDER_B = 3**300
ORDER_P = 2**216 * 3**300 * 277 - 1
ORDER_SMALL_FACTORS = [2, 2, 5, 23, 359, 2089, 39733, 44059, 74353]
ORDER_LARGE_FACTOR = ("37628724343042581190433455539389264355404578964704347"
                      "59039416676945740598806299461624575502089058332472952"
                      "9427908921244148421914499463")
ORDER_RATIONAL_A = ("32319123496536786843254458765608553095663568521872334"
                    "297530315749275438736572")
ORDER_RATIONAL_B = ("37902893736016880777193854875253045553175457573067191"
                    "2406340378400674751175560")
ORDER_RATIONAL_C = ("85437128777417136022423941321585505761757160615798739"
                    "72406075696054195168847143870020389324092617191284723"
                    "80905798835064955553407208320599901478282089806543945"
                    "266931422175906643935346")
ORDER_RATIONAL_Z = ("87978348577011335417453239649099382225650021375809220"
                    "4820354441211407993264179570949123846469170675585119")


def product_of(factors) -> int:
    return prod(factors)
