package ui;

public class Theme {
    public int pad;

    public void apply() {
    }
}
