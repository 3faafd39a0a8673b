mod common;

use proptest::prelude::*;
use workbench::sexpr::{atom_p, car, cdr, cons, print, read, SExpr, Word};

proptest! {
    #[test]
    fn print_then_read_is_identity(e in common::sexpr()) {
        prop_assert_eq!(read(&print(&e)), Ok(e));
    }

    #[test]
    fn projection(a in common::sexpr(), b in common::sexpr()) {
        let pair = cons(a.clone(), b.clone());
        prop_assert_eq!(car(&pair), Ok(a));
        prop_assert_eq!(cdr(&pair), Ok(b));
        prop_assert_eq!(atom_p(&pair), Word::Nil);
    }

    #[test]
    fn reader_is_total(text in "[()'. ;a-z0-9\\n]{0,40}") {
        // accept or reject, never hang or panic
        let _ = read(&text);
    }

    #[test]
    fn quote_sugar_matches_long_form(e in common::sexpr()) {
        let text = print(&e);
        prop_assert_eq!(
            read(&format!("'{text}")),
            read(&format!("(quote {text})"))
        );
    }
}

#[test]
fn atoms_are_atoms() {
    for e in [
        SExpr::sym("a"),
        SExpr::num(3u32),
        SExpr::boolean(true),
        SExpr::boolean(false),
    ] {
        assert_eq!(atom_p(&e), Word::True);
    }
}
