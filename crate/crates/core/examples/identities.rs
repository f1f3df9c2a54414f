//! Checks the Chebyshev product, composition and derivative identities for
//! small indices, printing one line per family.

use chebknot::poly::{cheb_t, cheb_u, ExactPoly};

fn main() {
    let t = ExactPoly::t();
    let w = ExactPoly::one() - &t * &t;
    let (mut products, mut compositions, mut derivatives) = (0, 0, 0);
    for m in 0..=12i64 {
        for n in 0..=m {
            let (tm, tn) = (cheb_t(m as usize), cheb_t(n as usize));
            let uu = &w * &(cheb_u(m - 1) * cheb_u(n - 1));
            assert_eq!(cheb_t((m + n) as usize), &(&tm * &tn) - &uu);
            assert_eq!(cheb_t((m - n) as usize), &(&tm * &tn) + &uu);
            assert_eq!(cheb_u(m + n), cheb_u(m) * tn.clone() + cheb_t(m as usize + 1) * cheb_u(n - 1));
            assert_eq!(cheb_u(m - n), cheb_u(m) * tn.clone() - cheb_t(m as usize + 1) * cheb_u(n - 1));
            products += 4;
            if n >= 1 {
                assert_eq!(tm.compose(&tn), cheb_t((m * n) as usize));
                assert_eq!(cheb_u(m * n - 1), cheb_u(n - 1).compose(&tm) * cheb_u(m - 1));
                compositions += 2;
            }
        }
        assert_eq!(cheb_t(m as usize).derivative(), cheb_u(m - 1).scale_int(m));
        derivatives += 1;
    }
    println!("product identities checked: {products}");
    println!("composition identities checked: {compositions}");
    println!("derivative identities checked: {derivatives}");
    println!("T_5 = {}", cheb_t(5));
    println!("U_4 = {}", cheb_u(4));
    println!("T_3(T_4) = {}", cheb_t(3).compose(&cheb_t(4)));
}
