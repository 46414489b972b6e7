# cython: language_level=3
"""Hot Delta evaluation kernels over prime fields, in Cython pure-Python mode.

This file runs unmodified as ordinary Python; when compiled by Cython the
typed locals turn the formula chains into C int64 arithmetic.  All values
stay below 2^63 because every product is reduced after each factor and the
supported primes are capped at P_LIMIT (callers route bigger primes to the
generic arbitrary-precision path).

Delta_3 works mod M = 1728*pr: S^3 - T^2 = 1728*disc3 holds identically
over Z, so the residue mod 1728*pr of an integer evaluation is 1728 times
the wanted residue mod pr, and the exact division by 1728 survives the
modular shortcut.  Delta_6 works mod 16*pr the same way.  Inputs must be
canonical residues 0..pr-1 (they double as the integer lifts).
"""

try:
    import cython
except ImportError:  # annotations stay inert; nothing is compiled
    class _CythonShim:
        compiled = False

        def __getattr__(self, name):
            return object

    cython = _CythonShim()

COMPILED = bool(cython.compiled)

P_LIMIT = 10 ** 6

DIMS = {3: 18, 4: 14, 6: 10, 8: 7, 12: 5}


def delta3_mod(cs, pr: cython.longlong) -> cython.longlong:
    """Delta_3 of an 18-tuple of residues mod pr (canonical lifts 0..pr-1)."""
    M: cython.longlong = 1728 * pr
    a: cython.longlong = cs[0] % M
    b: cython.longlong = cs[1] % M
    c: cython.longlong = cs[2] % M
    d: cython.longlong = cs[3] % M
    e: cython.longlong = cs[4] % M
    f: cython.longlong = cs[5] % M
    g: cython.longlong = cs[6] % M
    h: cython.longlong = cs[7] % M
    i: cython.longlong = cs[8] % M
    j: cython.longlong = cs[9] % M
    k: cython.longlong = cs[10] % M
    l: cython.longlong = cs[11] % M
    m: cython.longlong = cs[12] % M
    n: cython.longlong = cs[13] % M
    o: cython.longlong = cs[14] % M
    p: cython.longlong = cs[15] % M
    q: cython.longlong = cs[16] % M
    r: cython.longlong = cs[17] % M
    A_: cython.longlong = (4*(a*d%M*g%M) - (g*j%M*j%M) - (d*m%M*m%M) + (j*m%M*p%M) - (a*p%M*p%M)) % M
    B_: cython.longlong = (4*(b*d%M*g%M) + 4*(a*e%M*g%M) + 4*(a*d%M*h%M) - (h*j%M*j%M) - 2*(g*j%M*k%M) - (e*m%M*m%M)
           - 2*(d*m%M*n%M) + (k*m%M*p%M) + (j*n%M*p%M) - (b*p%M*p%M) + (j*m%M*q%M) -
           2*(a*p%M*q%M)) % M
    C_: cython.longlong = (4*(c*d%M*g%M) + 4*(a*f%M*g%M) + 4*(a*d%M*i%M) - (i*j%M*j%M) - 2*(g*j%M*l%M) - (f*m%M*m%M)
           - 2*(d*m%M*o%M) + (l*m%M*p%M) + (j*o%M*p%M) - (c*p%M*p%M) + (j*m%M*r%M) -
           2*(a*p%M*r%M)) % M
    D_: cython.longlong = (4*(b*e%M*g%M) + 4*(b*d%M*h%M) + 4*(a*e%M*h%M) - 2*(h*j%M*k%M) - (g*k%M*k%M) -
           2*(e*m%M*n%M) - (d*n%M*n%M) + (k*n%M*p%M) + (k*m%M*q%M) + (j*n%M*q%M) -
           2*(b*p%M*q%M) - (a*q%M*q%M)) % M
    E_: cython.longlong = (4*(c*e%M*g%M) + 4*(b*f%M*g%M) + 4*(c*d%M*h%M) + 4*(a*f%M*h%M) + 4*(b*d%M*i%M) +
           4*(a*e%M*i%M) - 2*(i*j%M*k%M) - 2*(h*j%M*l%M) - 2*(g*k%M*l%M) - 2*(f*m%M*n%M) -
           2*(e*m%M*o%M) - 2*(d*n%M*o%M) + (l*n%M*p%M) + (k*o%M*p%M) + (l*m%M*q%M) +
           (j*o%M*q%M) - 2*(c*p%M*q%M) + (k*m%M*r%M) + (j*n%M*r%M) - 2*(b*p%M*r%M) -
           2*(a*q%M*r%M)) % M
    F_: cython.longlong = (4*(c*f%M*g%M) + 4*(c*d%M*i%M) + 4*(a*f%M*i%M) - 2*(i*j%M*l%M) - (g*l%M*l%M) -
           2*(f*m%M*o%M) - (d*o%M*o%M) + (l*o%M*p%M) + (l*m%M*r%M) + (j*o%M*r%M) -
           2*(c*p%M*r%M) - (a*r%M*r%M)) % M
    G_: cython.longlong = (4*(b*e%M*h%M) - (h*k%M*k%M) - (e*n%M*n%M) + (k*n%M*q%M) - (b*q%M*q%M)) % M
    H_: cython.longlong = (4*(c*e%M*h%M) + 4*(b*f%M*h%M) + 4*(b*e%M*i%M) - (i*k%M*k%M) - 2*(h*k%M*l%M) - (f*n%M*n%M)
           - 2*(e*n%M*o%M) + (l*n%M*q%M) + (k*o%M*q%M) - (c*q%M*q%M) + (k*n%M*r%M) -
           2*(b*q%M*r%M)) % M
    I_: cython.longlong = (4*(c*f%M*h%M) + 4*(c*e%M*i%M) + 4*(b*f%M*i%M) - 2*(i*k%M*l%M) - (h*l%M*l%M) -
           2*(f*n%M*o%M) - (e*o%M*o%M) + (l*o%M*q%M) + (l*n%M*r%M) + (k*o%M*r%M) -
           2*(c*q%M*r%M) - (b*r%M*r%M)) % M
    J_: cython.longlong = (4*(c*f%M*i%M) - (i*l%M*l%M) - (f*o%M*o%M) + (l*o%M*r%M) - (c*r%M*r%M)) % M
    S: cython.longlong = ((E_*E_%M*E_%M*E_%M) - 8*(D_*E_%M*E_%M*F_%M) + 16*(D_*D_%M*F_%M*F_%M) +
           24*(C_*E_%M*F_%M*G_%M) - 48*(B_*F_%M*F_%M*G_%M) - 8*(C_*E_%M*E_%M*H_%M) -
           16*(C_*D_%M*F_%M*H_%M) + 24*(B_*E_%M*F_%M*H_%M) + 16*(C_*C_%M*H_%M*H_%M) -
           48*(A_*F_%M*H_%M*H_%M) + 24*(C_*D_%M*E_%M*I_%M) - 8*(B_*E_%M*E_%M*I_%M) -
           16*(B_*D_%M*F_%M*I_%M) - 48*(C_*C_%M*G_%M*I_%M) + 144*(A_*F_%M*G_%M*I_%M) -
           16*(B_*C_%M*H_%M*I_%M) + 24*(A_*E_%M*H_%M*I_%M) + 16*(B_*B_%M*I_%M*I_%M) -
           48*(A_*D_%M*I_%M*I_%M) - 48*(C_*D_%M*D_%M*J_%M) + 24*(B_*D_%M*E_%M*J_%M) +
           144*(B_*C_%M*G_%M*J_%M) - 216*(A_*E_%M*G_%M*J_%M) - 48*(B_*B_%M*H_%M*J_%M) +
           144*(A_*D_%M*H_%M*J_%M)) % M
    T: cython.longlong = (- (E_*E_%M*E_%M*E_%M*E_%M*E_%M) + 12*(D_*E_%M*E_%M*E_%M*E_%M*F_%M) -
           48*(D_*D_%M*E_%M*E_%M*F_%M*F_%M) + 64*(D_*D_%M*D_%M*F_%M*F_%M*F_%M) -
           36*(C_*E_%M*E_%M*E_%M*F_%M*G_%M) + 144*(C_*D_%M*E_%M*F_%M*F_%M*G_%M) +
           72*(B_*E_%M*E_%M*F_%M*F_%M*G_%M) - 288*(B_*D_%M*F_%M*F_%M*F_%M*G_%M) -
           216*(C_*C_%M*F_%M*F_%M*G_%M*G_%M) + 864*(A_*F_%M*F_%M*F_%M*G_%M*G_%M) +
           12*(C_*E_%M*E_%M*E_%M*E_%M*H_%M) - 24*(C_*D_%M*E_%M*E_%M*F_%M*H_%M) -
           36*(B_*E_%M*E_%M*E_%M*F_%M*H_%M) - 96*(C_*D_%M*D_%M*F_%M*F_%M*H_%M) +
           144*(B_*D_%M*E_%M*F_%M*F_%M*H_%M) + 144*(C_*C_%M*E_%M*F_%M*G_%M*H_%M) +
           144*(B_*C_%M*F_%M*F_%M*G_%M*H_%M) - 864*(A_*E_%M*F_%M*F_%M*G_%M*H_%M) -
           48*(C_*C_%M*E_%M*E_%M*H_%M*H_%M) - 96*(C_*C_%M*D_%M*F_%M*H_%M*H_%M) +
           144*(B_*C_%M*E_%M*F_%M*H_%M*H_%M) + 72*(A_*E_%M*E_%M*F_%M*H_%M*H_%M) -
           216*(B_*B_%M*F_%M*F_%M*H_%M*H_%M) + 576*(A_*D_%M*F_%M*F_%M*H_%M*H_%M) +
           64*(C_*C_%M*C_%M*H_%M*H_%M*H_%M) - 288*(A_*C_%M*F_%M*H_%M*H_%M*H_%M) -
           36*(C_*D_%M*E_%M*E_%M*E_%M*I_%M) + 12*(B_*E_%M*E_%M*E_%M*E_%M*I_%M) +
           144*(C_*D_%M*D_%M*E_%M*F_%M*I_%M) - 24*(B_*D_%M*E_%M*E_%M*F_%M*I_%M) -
           96*(B_*D_%M*D_%M*F_%M*F_%M*I_%M) + 72*(C_*C_%M*E_%M*E_%M*G_%M*I_%M) +
           144*(C_*C_%M*D_%M*F_%M*G_%M*I_%M) - 720*(B_*C_%M*E_%M*F_%M*G_%M*I_%M) +
           648*(A_*E_%M*E_%M*F_%M*G_%M*I_%M) + 576*(B_*B_%M*F_%M*F_%M*G_%M*I_%M) -
           864*(A_*D_%M*F_%M*F_%M*G_%M*I_%M) + 144*(C_*C_%M*D_%M*E_%M*H_%M*I_%M) -
           24*(B_*C_%M*E_%M*E_%M*H_%M*I_%M) - 36*(A_*E_%M*E_%M*E_%M*H_%M*I_%M) -
           48*(B_*C_%M*D_%M*F_%M*H_%M*I_%M) + 144*(B_*B_%M*E_%M*F_%M*H_%M*I_%M) -
           720*(A_*D_%M*E_%M*F_%M*H_%M*I_%M) - 288*(C_*C_%M*C_%M*G_%M*H_%M*I_%M) +
           1296*(A_*C_%M*F_%M*G_%M*H_%M*I_%M) - 96*(B_*C_%M*C_%M*H_%M*H_%M*I_%M) +
           144*(A_*C_%M*E_%M*H_%M*H_%M*I_%M) + 144*(A_*B_%M*F_%M*H_%M*H_%M*I_%M) -
           216*(C_*C_%M*D_%M*D_%M*I_%M*I_%M) + 144*(B_*C_%M*D_%M*E_%M*I_%M*I_%M) -
           48*(B_*B_%M*E_%M*E_%M*I_%M*I_%M) + 72*(A_*D_%M*E_%M*E_%M*I_%M*I_%M) -
           96*(B_*B_%M*D_%M*F_%M*I_%M*I_%M) + 576*(A_*D_%M*D_%M*F_%M*I_%M*I_%M) +
           576*(B_*C_%M*C_%M*G_%M*I_%M*I_%M) - 864*(A_*C_%M*E_%M*G_%M*I_%M*I_%M) -
           864*(A_*B_%M*F_%M*G_%M*I_%M*I_%M) - 96*(B_*B_%M*C_%M*H_%M*I_%M*I_%M) +
           144*(A_*C_%M*D_%M*H_%M*I_%M*I_%M) + 144*(A_*B_%M*E_%M*H_%M*I_%M*I_%M) -
           216*(A_*A_%M*H_%M*H_%M*I_%M*I_%M) + 64*(B_*B_%M*B_%M*I_%M*I_%M*I_%M) -
           288*(A_*B_%M*D_%M*I_%M*I_%M*I_%M) + 864*(A_*A_%M*G_%M*I_%M*I_%M*I_%M) +
           72*(C_*D_%M*D_%M*E_%M*E_%M*J_%M) - 36*(B_*D_%M*E_%M*E_%M*E_%M*J_%M) -
           288*(C_*D_%M*D_%M*D_%M*F_%M*J_%M) + 144*(B_*D_%M*D_%M*E_%M*F_%M*J_%M) -
           864*(C_*C_%M*D_%M*E_%M*G_%M*J_%M) + 648*(B_*C_%M*E_%M*E_%M*G_%M*J_%M) -
           540*(A_*E_%M*E_%M*E_%M*G_%M*J_%M) + 1296*(B_*C_%M*D_%M*F_%M*G_%M*J_%M) -
           864*(B_*B_%M*E_%M*F_%M*G_%M*J_%M) + 1296*(A_*D_%M*E_%M*F_%M*G_%M*J_%M) +
           864*(C_*C_%M*C_%M*G_%M*G_%M*J_%M) - 3888*(A_*C_%M*F_%M*G_%M*G_%M*J_%M) +
           576*(C_*C_%M*D_%M*D_%M*H_%M*J_%M) - 720*(B_*C_%M*D_%M*E_%M*H_%M*J_%M) +
           72*(B_*B_%M*E_%M*E_%M*H_%M*J_%M) + 648*(A_*D_%M*E_%M*E_%M*H_%M*J_%M) +
           144*(B_*B_%M*D_%M*F_%M*H_%M*J_%M) - 864*(A_*D_%M*D_%M*F_%M*H_%M*J_%M) -
           864*(B_*C_%M*C_%M*G_%M*H_%M*J_%M) + 1296*(A_*C_%M*E_%M*G_%M*H_%M*J_%M) +
           1296*(A_*B_%M*F_%M*G_%M*H_%M*J_%M) + 576*(B_*B_%M*C_%M*H_%M*H_%M*J_%M) -
           864*(A_*C_%M*D_%M*H_%M*H_%M*J_%M) - 864*(A_*B_%M*E_%M*H_%M*H_%M*J_%M) +
           864*(A_*A_%M*H_%M*H_%M*H_%M*J_%M) + 144*(B_*C_%M*D_%M*D_%M*I_%M*J_%M) +
           144*(B_*B_%M*D_%M*E_%M*I_%M*J_%M) - 864*(A_*D_%M*D_%M*E_%M*I_%M*J_%M) -
           864*(B_*B_%M*C_%M*G_%M*I_%M*J_%M) + 1296*(A_*C_%M*D_%M*G_%M*I_%M*J_%M) +
           1296*(A_*B_%M*E_%M*G_%M*I_%M*J_%M) - 288*(B_*B_%M*B_%M*H_%M*I_%M*J_%M) +
           1296*(A_*B_%M*D_%M*H_%M*I_%M*J_%M) - 3888*(A_*A_%M*G_%M*H_%M*I_%M*J_%M) -
           216*(B_*B_%M*D_%M*D_%M*J_%M*J_%M) + 864*(A_*D_%M*D_%M*D_%M*J_%M*J_%M) +
           864*(B_*B_%M*B_%M*G_%M*J_%M*J_%M) - 3888*(A_*B_%M*D_%M*G_%M*J_%M*J_%M) +
           5832*(A_*A_%M*G_%M*G_%M*J_%M*J_%M)) % M
    num: cython.longlong = (S * S % M * S % M - T * T % M) % M
    return num // 1728


def delta4_mod(cs, pr: cython.longlong) -> cython.longlong:
    """Delta_4 of a 14-tuple of residues mod pr."""
    a: cython.longlong = cs[0] % pr
    b: cython.longlong = cs[1] % pr
    c: cython.longlong = cs[2] % pr
    d: cython.longlong = cs[3] % pr
    e: cython.longlong = cs[4] % pr
    f: cython.longlong = cs[5] % pr
    g: cython.longlong = cs[6] % pr
    h: cython.longlong = cs[7] % pr
    i: cython.longlong = cs[8] % pr
    j: cython.longlong = cs[9] % pr
    k: cython.longlong = cs[10] % pr
    l: cython.longlong = cs[11] % pr
    m: cython.longlong = cs[12] % pr
    n: cython.longlong = cs[13] % pr
    A_: cython.longlong = (4*(a*c%pr*e%pr*m%pr) - (e*g%pr*g%pr*m%pr) - (a*k%pr*k%pr*m%pr) + (g*i%pr*k%pr*m%pr) -
           (c*i%pr*i%pr*m%pr)) % pr
    B_: cython.longlong = (4*(b*c%pr*e%pr*m%pr) + 4*(a*d%pr*e%pr*m%pr) + 4*(a*c%pr*f%pr*m%pr) - (f*g%pr*g%pr*m%pr) -
           2*(e*g%pr*h%pr*m%pr) - (b*k%pr*k%pr*m%pr) - 2*(a*k%pr*l%pr*m%pr) +
           4*(a*c%pr*e%pr*n%pr) - (e*g%pr*g%pr*n%pr) - (a*k%pr*k%pr*n%pr) + (h*i%pr*k%pr*m%pr)
           + (g*i%pr*l%pr*m%pr) + (g*i%pr*k%pr*n%pr) - (d*i%pr*i%pr*m%pr) - (c*i%pr*i%pr*n%pr)
           + (g*j%pr*k%pr*m%pr) - 2*(c*i%pr*j%pr*m%pr)) % pr
    C_: cython.longlong = (4*(b*d%pr*e%pr*m%pr) + 4*(b*c%pr*f%pr*m%pr) + 4*(a*d%pr*f%pr*m%pr) - 2*(f*g%pr*h%pr*m%pr)
           - (e*h%pr*h%pr*m%pr) - 2*(b*k%pr*l%pr*m%pr) - (a*l%pr*l%pr*m%pr) +
           4*(b*c%pr*e%pr*n%pr) + 4*(a*d%pr*e%pr*n%pr) + 4*(a*c%pr*f%pr*n%pr) -
           (f*g%pr*g%pr*n%pr) - 2*(e*g%pr*h%pr*n%pr) - (b*k%pr*k%pr*n%pr) -
           2*(a*k%pr*l%pr*n%pr) + (h*i%pr*l%pr*m%pr) + (h*i%pr*k%pr*n%pr) + (g*i%pr*l%pr*n%pr)
           - (d*i%pr*i%pr*n%pr) + (h*j%pr*k%pr*m%pr) + (g*j%pr*l%pr*m%pr) + (g*j%pr*k%pr*n%pr)
           - 2*(d*i%pr*j%pr*m%pr) - 2*(c*i%pr*j%pr*n%pr) - (c*j%pr*j%pr*m%pr)) % pr
    D_: cython.longlong = (4*(b*d%pr*f%pr*m%pr) - (f*h%pr*h%pr*m%pr) - (b*l%pr*l%pr*m%pr) + 4*(b*d%pr*e%pr*n%pr) +
           4*(b*c%pr*f%pr*n%pr) + 4*(a*d%pr*f%pr*n%pr) - 2*(f*g%pr*h%pr*n%pr) -
           (e*h%pr*h%pr*n%pr) - 2*(b*k%pr*l%pr*n%pr) - (a*l%pr*l%pr*n%pr) + (h*i%pr*l%pr*n%pr)
           + (h*j%pr*l%pr*m%pr) + (h*j%pr*k%pr*n%pr) + (g*j%pr*l%pr*n%pr) -
           2*(d*i%pr*j%pr*n%pr) - (d*j%pr*j%pr*m%pr) - (c*j%pr*j%pr*n%pr)) % pr
    E_: cython.longlong = (4*(b*d%pr*f%pr*n%pr) - (f*h%pr*h%pr*n%pr) - (b*l%pr*l%pr*n%pr) + (h*j%pr*l%pr*n%pr) -
           (d*j%pr*j%pr*n%pr)) % pr
    d4: cython.longlong = ((B_*B_%pr*C_%pr*C_%pr*D_%pr*D_%pr) - 4*(A_*C_%pr*C_%pr*C_%pr*D_%pr*D_%pr) -
           4*(B_*B_%pr*B_%pr*D_%pr*D_%pr*D_%pr) + 18*(A_*B_%pr*C_%pr*D_%pr*D_%pr*D_%pr) -
           27*(A_*A_%pr*D_%pr*D_%pr*D_%pr*D_%pr) - 4*(B_*B_%pr*C_%pr*C_%pr*C_%pr*E_%pr) +
           16*(A_*C_%pr*C_%pr*C_%pr*C_%pr*E_%pr) + 18*(B_*B_%pr*B_%pr*C_%pr*D_%pr*E_%pr) -
           80*(A_*B_%pr*C_%pr*C_%pr*D_%pr*E_%pr) - 6*(A_*B_%pr*B_%pr*D_%pr*D_%pr*E_%pr) +
           144*(A_*A_%pr*C_%pr*D_%pr*D_%pr*E_%pr) - 27*(B_*B_%pr*B_%pr*B_%pr*E_%pr*E_%pr) +
           144*(A_*B_%pr*B_%pr*C_%pr*E_%pr*E_%pr) - 128*(A_*A_%pr*C_%pr*C_%pr*E_%pr*E_%pr) -
           192*(A_*A_%pr*B_%pr*D_%pr*E_%pr*E_%pr) + 256*(A_*A_%pr*A_%pr*E_%pr*E_%pr*E_%pr)) % pr
    return d4


def delta6_mod(cs, pr: cython.longlong) -> cython.longlong:
    """Delta_6 of a 10-tuple of residues mod pr (canonical lifts 0..pr-1)."""
    M: cython.longlong = 16 * pr
    a: cython.longlong = cs[0] % M
    b: cython.longlong = cs[1] % M
    d: cython.longlong = cs[2] % M
    e: cython.longlong = cs[3] % M
    g: cython.longlong = cs[4] % M
    h: cython.longlong = cs[5] % M
    j: cython.longlong = cs[6] % M
    k: cython.longlong = cs[7] % M
    o: cython.longlong = cs[8] % M
    r: cython.longlong = cs[9] % M
    b1: cython.longlong = (4*(a*d%M*g%M) - (g*j%M*j%M)) % M
    b2: cython.longlong = (4*(b*d%M*g%M) + 4*(a*e%M*g%M) + 4*(a*d%M*h%M) - (h*j%M*j%M) - 2*(g*j%M*k%M)) % M
    b3: cython.longlong = (4*(b*e%M*g%M) + 4*(b*d%M*h%M) + 4*(a*e%M*h%M) - 2*(h*j%M*k%M) - (g*k%M*k%M)) % M
    b4: cython.longlong = (4*(b*e%M*h%M) - (h*k%M*k%M)) % M
    b5: cython.longlong = (- (a*r%M*r%M) - (d*o%M*o%M) + (j*o%M*r%M)) % M
    b6: cython.longlong = (- (b*r%M*r%M) - (e*o%M*o%M) + (k*o%M*r%M)) % M
    A_: cython.longlong = b1 * b5 % M
    B_: cython.longlong = (b1 * b6 + b2 * b5) % M
    C_: cython.longlong = (b2 * b6 + b3 * b5) % M
    D_: cython.longlong = (b3 * b6 + b4 * b5) % M
    E_: cython.longlong = b4 * b6 % M
    d4: cython.longlong = ((B_*B_%M*C_%M*C_%M*D_%M*D_%M) - 4*(A_*C_%M*C_%M*C_%M*D_%M*D_%M) -
           4*(B_*B_%M*B_%M*D_%M*D_%M*D_%M) + 18*(A_*B_%M*C_%M*D_%M*D_%M*D_%M) -
           27*(A_*A_%M*D_%M*D_%M*D_%M*D_%M) - 4*(B_*B_%M*C_%M*C_%M*C_%M*E_%M) +
           16*(A_*C_%M*C_%M*C_%M*C_%M*E_%M) + 18*(B_*B_%M*B_%M*C_%M*D_%M*E_%M) -
           80*(A_*B_%M*C_%M*C_%M*D_%M*E_%M) - 6*(A_*B_%M*B_%M*D_%M*D_%M*E_%M) +
           144*(A_*A_%M*C_%M*D_%M*D_%M*E_%M) - 27*(B_*B_%M*B_%M*B_%M*E_%M*E_%M) +
           144*(A_*B_%M*B_%M*C_%M*E_%M*E_%M) - 128*(A_*A_%M*C_%M*C_%M*E_%M*E_%M) -
           192*(A_*A_%M*B_%M*D_%M*E_%M*E_%M) + 256*(A_*A_%M*A_%M*E_%M*E_%M*E_%M)) % M
    return d4 // 16


def delta8_mod(cs, pr: cython.longlong) -> cython.longlong:
    """Delta_8 of a 7-tuple of residues mod pr."""
    a: cython.longlong = cs[0] % pr
    b: cython.longlong = cs[1] % pr
    c: cython.longlong = cs[2] % pr
    d: cython.longlong = cs[3] % pr
    e: cython.longlong = cs[4] % pr
    f: cython.longlong = cs[5] % pr
    g: cython.longlong = cs[6] % pr
    q1: cython.longlong = (b * b - 4 * (a * c % pr)) % pr
    q2: cython.longlong = (c * d % pr * d + a * e % pr * e - b * d % pr * e) % pr
    inner: cython.longlong = f * f % pr * g % pr * q1 % pr * q2 % pr
    return inner * inner % pr


def delta12_mod(cs, pr: cython.longlong) -> cython.longlong:
    """Product of the five coordinates mod pr."""
    acc: cython.longlong = cs[0] % pr
    acc = acc * (cs[1] % pr) % pr
    acc = acc * (cs[2] % pr) % pr
    acc = acc * (cs[3] % pr) % pr
    acc = acc * (cs[4] % pr) % pr
    return acc


KERNEL_FNS = {3: delta3_mod, 4: delta4_mod, 6: delta6_mod, 8: delta8_mod,
              12: delta12_mod}


def sweep(m, pr: cython.longlong, start: cython.longlong, stop: cython.longlong,
          collect_zeros=False, want_hist=False):
    """Exhaustive Delta_m scan of index range [start, stop).

    Index n encodes the vector whose entries are the base-pr digits of n,
    first label most significant.  Returns (stable_count, first_stable
    or -1, zero-index list or None, histogram dict or None).
    """
    dim: cython.int = DIMS[m]
    fn = KERNEL_FNS[m]
    digits = [0] * dim
    n: cython.longlong = start
    i: cython.int = dim - 1
    while i >= 0:
        digits[i] = n % pr
        n //= pr
        i -= 1
    stable: cython.longlong = 0
    first: cython.longlong = -1
    zeros = [] if collect_zeros else None
    hist = {} if want_hist else None
    idx: cython.longlong = start
    while idx < stop:
        d = fn(digits, pr)
        if d:
            stable += 1
            if first < 0:
                first = idx
        elif zeros is not None:
            zeros.append(idx)
        if hist is not None:
            hist[d] = hist.get(d, 0) + 1
        i = dim - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] == pr:
                digits[i] = 0
                i -= 1
            else:
                break
        idx += 1
    return stable, first, zeros, hist
