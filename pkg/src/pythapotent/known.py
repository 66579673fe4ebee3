"""Known generators and witnesses on the curves of (3, 4)."""

from fractions import Fraction as Q

from .curve import Point

BASE = (3, 4)

GENERATORS = {
    3: [Point(-3888, 50544)],
    4: [Point(-11616, 1779360)],
    6: [Point(Q(46022656, 9), Q(-678725632000, 27))],
    8: [
        Point(
            Q(7708125201644979550524801024, 4449714580590446281),
            Q(1277921705702061766209671471345189388288000, 9386382158955136069419053179),
        )
    ],
    9: [
        Point(
            Q(25081364886334831007139600, 1571551568609929201),
            Q(41443059164404768152156856423653413183280, 1970121246732012270673366199),
        ),
        Point(Q(37016224137216, 3481), Q(-626321243401613475840, 205379)),
    ],
}

# (h, label) -> (sqrt of x([2]P), k, l, outer hypotenuse); "Q" is P + P'.
WITNESSES = {
    (3, "P"): (Q(120), 8, 15, 984),
    (4, "P"): (Q(912, 11), 176, 57, 20400),
    (6, "P"): (Q(3542528, 10335), 82680, 6919, 66603976),
    (8, "P"): (
        Q(53440130127350994946668083276381874419712, 5167588869543442260000066303720001735),
        165362843825390152320002121719040055520,
        26093813538745603001302775037295837119,
        2025214764653997025456624774452736238320416,
    ),
    (9, "P"): (
        Q(893146963381147972449638465746558838722398648, 1411411003643292904433293132813004363405),
        46249115767383421892470149376016526980055040,
        111643370422643496556204808218319854840299831,
        29280793774283640248199258896077312831993114558464,
    ),
    (9, "P'"): (Q(33879841085325312, 2390157690995), 2390157690995, 129241337148, 57975169167761913),
    (9, "Q"): (
        Q(535606775034572770422692764010359062528, 101246892970078905163938616171330325),
        809975143760631241311508929370642600,
        16345421601396874097372215698558321,
        16508511692072764149750761383248338944776,
    ),
}

# degrees whose curve has rank 0
RANK_ZERO = (1, 2, 5, 7, 10)
