package ui;

public class Theme {
    public int pad;

    public boolean dark = true;

    public void apply() {
    }
}
