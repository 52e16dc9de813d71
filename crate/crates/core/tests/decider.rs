use kideal::decider::*;
use kideal::Error;

#[test]
fn scalar_for_small_q() {
    for q in [9u32, 7, 17, 23] {
        let r = decide_scalar(q).unwrap();
        assert_eq!(r.c, 1, "q = {q}");
        assert_eq!(r.routes.direct, r.routes.subtraction);
        assert!(r.all_checks_hold(), "q = {q}: {:?}", r.checks);
        assert_eq!(r.principal.center, (1 << (r.n - 2)) + 3);
        println!(
            "q={q} n={} whole={:?} principal={:?} presented={:?} total_ms={:.0}",
            r.n, r.whole, r.principal, r.presented, r.timings.total_ms
        );
    }
}

#[test]
fn q9_report_fields() {
    let r = decide_scalar(9).unwrap();
    assert_eq!((r.p, r.exponent, r.n, r.q_odd), (3, 2, 4, 1));
    assert_eq!((r.whole.center, r.whole.t1perp, r.whole.zbar), (11, 6, 5));
    assert_eq!(r.principal.zbar, 3);
    assert_eq!(r.sylow_dihedral, Some(true));
    assert_eq!(r.ledger.blocks.len(), 3);
}

#[test]
fn inapplicable_and_invalid_inputs() {
    for q in [3u32, 5, 11, 13, 27, 29] {
        assert!(matches!(decide_scalar(q), Err(Error::MethodInapplicable(_))), "q = {q}");
    }
    for q in [8u32, 15, 1, 0] {
        assert!(matches!(decide_scalar(q), Err(Error::InvalidInput(_))), "q = {q}");
    }
}

#[test]
fn guard_is_a_resource_limit() {
    let opts = DeciderOptions { guard: 1000, ..DeciderOptions::default() };
    assert!(matches!(decide_scalar_with(17, opts), Err(Error::ResourceLimit(_))));
}

#[test]
fn dichotomy_map() {
    assert_eq!(scalar_from_radical_quotient(2).unwrap(), 1);
    assert_eq!(scalar_from_radical_quotient(3).unwrap(), 0);
    for v in [0, 1, 4] {
        assert!(matches!(scalar_from_radical_quotient(v), Err(Error::Assertion(_))));
    }
}

#[test]
fn presented_parameters() {
    for s in [1u32, 2, 3, 6] {
        assert!(matches!(decide_scalar_presented(s, 0), Err(Error::MethodInapplicable(_))));
    }
    assert!(matches!(decide_scalar_presented(4, 2), Err(Error::InvalidInput(_))));
    let r = decide_scalar_presented(4, 1).unwrap();
    assert_eq!(r.expected_radical_quot, 2);
    assert_eq!(r.computed.dims.center, 7);
    assert_eq!(r.computed.validation.dim, 37);
}

#[test]
fn report_serializes() {
    let r = decide_scalar(7).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    let back: ScalarReport = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r);
}
