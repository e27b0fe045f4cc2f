package txt;

public class Editor {
    public void insert(String s, int at) {
    }
}
