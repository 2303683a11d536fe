use hopf_cyclic::report::Status;
use hopf_cyclic_cli::report::{CheckOut, RunReport};
use proptest::prelude::*;

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![4 => Just(Status::Pass), 1 => Just(Status::Fail), 1 => Just(Status::Error)]
}

fn suite() -> impl Strategy<Value = Vec<CheckOut>> {
    prop::collection::vec(("[a-e]{1,3}", status()), 0..12).prop_map(|v| {
        v.into_iter().map(|(id, status)| CheckOut { id, status, witness: None, lhs: None, rhs: None, note: None }).collect()
    })
}

proptest! {
    #[test]
    fn exit_zero_iff_all_pass(checks in suite(), fail_fast in any::<bool>()) {
        let all_pass = !checks.is_empty() && checks.iter().all(|c| c.status == Status::Pass);
        let mut r = RunReport::new("synthetic", vec![]);
        r.checks = checks.clone();
        r.finish(fail_fast);
        prop_assert_eq!(r.exit_code() == 0, all_pass);
        prop_assert_eq!(r.checks.len(), checks.len());
        prop_assert!(r.checks.windows(2).all(|w| w[0].id <= w[1].id));
        if fail_fast {
            if let Some(i) = r.checks.iter().position(|c| c.status != Status::Pass) {
                prop_assert!(r.checks[i].status != Status::Skipped);
                prop_assert!(r.checks[i + 1..].iter().all(|c| c.status == Status::Skipped));
            }
        } else {
            prop_assert!(r.checks.iter().all(|c| c.status != Status::Skipped));
        }
    }

    #[test]
    fn serialization_is_order_independent(checks in suite()) {
        let mut a = RunReport::new("synthetic", vec!["x".into()]);
        a.checks = checks.clone();
        a.finish(false);
        let mut b = RunReport::new("synthetic", vec!["x".into()]);
        b.checks = checks.into_iter().rev().collect();
        b.finish(false);
        let ids = |r: &RunReport| r.checks.iter().map(|c| c.id.clone()).collect::<Vec<_>>();
        prop_assert_eq!(ids(&a), ids(&b));
    }
}
