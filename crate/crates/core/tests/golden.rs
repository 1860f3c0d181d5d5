use turanlab::construct::parse_expr;
use turanlab::extremal::enumerate_extremal;
use turanlab::family::ForbiddenFamily;

fn c33() -> ForbiddenFamily {
    ForbiddenFamily::single(parse_expr("blowup(K(3),2)").unwrap().eval().unwrap()).unwrap()
}

#[test]
fn triangle_blow_up_small_orders() {
    let fam = c33();
    assert_eq!((fam.r(), fam.q()), (2, 2));
    let r7 = enumerate_extremal(7, &fam).unwrap();
    assert_eq!(r7.ex, 15);
    assert_eq!(r7.graphs, ["FFzfw", "FK~vg"]);
    let r8 = enumerate_extremal(8, &fam).unwrap();
    assert_eq!(r8.ex, 20);
    assert_eq!(r8.graphs, ["GK~vno"]);
}

#[test]
fn path_p4_order_six() {
    let fam = ForbiddenFamily::single(turanlab::construct::path(4).unwrap()).unwrap();
    let r = enumerate_extremal(6, &fam).unwrap();
    assert_eq!((r.ex, r.graphs.len()), (6, 1));
}
