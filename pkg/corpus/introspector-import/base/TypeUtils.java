package fj.data;

import java.beans.Introspector;

public class TypeUtils {
    public static String name(String methodName, boolean compatibleWithJavaBean) {
        String propertyName = methodName;
        return propertyName;
    }
}
