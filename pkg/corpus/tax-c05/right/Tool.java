package util2;

import java.util.ArrayList;

public class Tool {
    public void run() {
    }

    public void collect() {
        ArrayList items = null;
        items.add("x");
    }
}
