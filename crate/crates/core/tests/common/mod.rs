use num_integer::Integer;
use proptest::prelude::*;

use irreducia::poly::Polynomial;

/// Primitive, nonzero constant term, degree in `1..=max_degree`.
pub fn criterion_input(max_degree: usize, bound: i64) -> impl Strategy<Value = Polynomial> {
    (1..=max_degree)
        .prop_flat_map(move |m| {
            (
                prop::collection::vec(-bound..=bound, m - 1),
                (1..=bound, any::<bool>()),
                (1..=bound, any::<bool>()),
            )
        })
        .prop_map(|(mid, (a0, s0), (am, sm))| {
            let mut c = vec![if s0 { a0 } else { -a0 }];
            c.extend(mid);
            c.push(if sm { am } else { -am });
            let g = c.iter().fold(0i64, |g, x| g.gcd(x));
            Polynomial::from_i64s(&c.iter().map(|x| x / g).collect::<Vec<_>>())
        })
}
