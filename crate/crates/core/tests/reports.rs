use ghost5::{check_corollary, check_theorem, compare_conjecture, newton_polygon, MinorRecord, Valuation, WeightComponent};
use serde_json::json;

fn wc(k: i64, a: i64) -> WeightComponent {
    WeightComponent::new(k, a).unwrap()
}

#[test]
fn theorem_report_schema() {
    let r = check_theorem(wc(30, 0), 4).unwrap();
    assert_eq!(
        serde_json::to_value(&r).unwrap(),
        json!({"k": 30, "a": 0, "n": 4, "corank": 3, "bound": 3, "holds": true})
    );
}

#[test]
fn corollary_report_schema() {
    let r = check_corollary(wc(6, 0), 1).unwrap();
    assert_eq!(
        serde_json::to_value(&r).unwrap(),
        json!({"k": 6, "a": 0, "n": 1, "det_val": "inf", "ghost_val": "inf", "holds": true})
    );
}

#[test]
fn minor_record_schema() {
    let r = MinorRecord::build(wc(6, 0), 1).unwrap();
    assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"k":6,"a":0,"n":1,"entries":[["0/1 + 0/1*i"]]}"#);
}

#[test]
fn newton_polygon_schema() {
    let p = newton_polygon(&[(0, Valuation::Finite(0)), (1, Valuation::Infinite), (2, Valuation::Finite(1))]).unwrap();
    assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"vertices":[[0,0],[2,1]],"slopes":[[1,2,2]]}"#);
}

#[test]
fn conjecture_report_carries_both_polygons() {
    let r = compare_conjecture(wc(14, 2), 3).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["char_polygon", "ghost_polygon", "agree_up_to", "agree"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["char_polygon"]["vertices"][0], json!([0, 0]));
}
